# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Important constants for diffinfo.
"""


class DiffInfoConstants:

    @property
    def MASK64(self):
        return (1 << 64) - 1

    @property
    def SPLITMIX(self):
        # increment, first and second finalizer multipliers
        return {"gamma":  0x9E3779B97F4A7C15,
                "mix1":   0xBF58476D1CE4E5B9,
                "mix2":   0x94D049BB133111EB}

    @property
    def TOLERANCE(self):
        """ Tolerance for InfoValue identities that are analytically exact. """
        return 1e-9

    @property
    def DIST_TOLERANCE(self):
        return 1e-12

    @property
    def INFO_DIGITS(self):
        return 6

    @property
    def HEADERS(self):
        return {"surface":   ("x", "y", "delta"),
                "residue":   ("x", "y", "delta", "residue"),
                "multiset":  ("value", "count"),
                "census":    ("target", "count"),
                "gaps":      ("start", "gap"),
                "entropy":   ("op", "mode", "k", "n", "H", "delta"),
                "benchmark": ("n", "bruteforce_s", "gf2_s")}

    @property
    def EXIT(self):
        return {"ok":           0,
                "precondition": 1,
                "usage":        2}

    def __setattr__(self, name, value):
        raise AttributeError(f"Constant '{name}' cannot be assigned.")

    def __delattr__(self, name):
        raise AttributeError(f"Constant '{name}' cannot be deleted.")
