# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Options object.
"""

import operator
from enum import Enum


""" Literals for diffinfo """


class Literals:
    """
    Preset tags used by the result containers and the command line.
    """

    """ Output formats """
    text = "text"
    csv = "csv"
    json = "json"
    dimacs = "dimacs"

    """ SB-XOR solver methods """
    bruteforce = "bruteforce"
    gf2 = "gf2"

    """ Named data fixtures """
    scalefree22 = "scalefree22"
    xor3 = "xor3"

    """ Combinatorial counts """
    catalan = "catalan"
    stirling2 = "stirling2"
    bell = "bell"

    """ Elementary arithmetic for delta_arith """
    add = "add"
    mul = "mul"
    self_add = "self_add"
    self_mul = "self_mul"


class ZetaKind(str, Enum):
    """ Arithmetical functions on finite sets that drive a sorted injection. """
    cardinality = "cardinality"
    sum = "sum"
    product = "product"
    binary = "binary"
    parity = "parity"


class SubsetOp(str, Enum):
    sum = "sum"
    product = "product"
    parity = "parity"


class RateKind(str, Enum):
    constant = "constant"   # r(x) = c
    linear = "linear"       # r(x) = c x
    polynomial = "polynomial"  # r(x) = c x^k


class LogicOp(str, Enum):
    AND = "and"
    OR = "or"
    XOR = "xor"


class LogicMode(str, Enum):
    bit = "bit"            # two bits in, one bit out
    chain = "chain"        # k bits folded into one bit
    bitwise = "bitwise"    # two k-bit vectors, componentwise
    set = "set"            # n vectors of k bits, componentwise


def _check_count(name, val, minimum):
    try:
        val = operator.index(val)
    except TypeError:
        raise TypeError(f"Options.{name} must be an integer, not '{type(val).__name__}'.") from None
    if val < minimum:
        raise ValueError(f"Options.{name} must be at least {minimum}, got {val}.")
    return val


class Options:
    """ Configuration shared by all enumerating operations and by the command line. """

    def __init__(self, **kargs):
        """
        Initialization of an Options object. Every public property can be
        passed as a keyword argument, e.g. Options(seed=7, num_workers=4).
        """

        self._seed = 0
        """ Seed of the SplitMix64 stream used by every generator.

        Type         Default
        int          0
        """

        self._num_workers = 1
        """ Number of worker processes for partitioned enumerations.

        Type         Default
        int          1: run in-process.
        """

        self._verbose = False
        """ Print progress lines (to stderr) for long enumerations. """

        self._theta_warn = 1 << 20
        """ theta_index warns (BudgetWarning) when it has to scan past this
        phi_car index.
        """

        self._theta_limit = 1 << 26
        """ theta_index refuses (BudgetError) to scan past this phi_car index. """

        self._powerset_bound = 24
        """ Largest base set for which all subsets are enumerated. """

        self._solve_bound = 32
        """ Largest codebook handled by exhaustive subset search. """

        self._mitm_bound = 48
        """ Largest codebook handled by the meet-in-the-middle sum solver. """

        self._census_bound = 26
        """ Largest codebook for a full solution census (2^26 subsets). """

        self._bruteforce_bound = 26
        """ Largest SB-XOR row count for brute-force search. """

        self._sat_bound = 8
        """ Largest n and k for which the SAT formula is built. """

        self._surface_limit = 10 ** 6
        """ Largest number of cells sampled by an efficiency surface. """

        for key, val in kargs.items():
            if not hasattr(type(self), key):
                raise TypeError(f"Options() got an unexpected keyword argument '{key}'.")
            setattr(self, key, val)

    def __eq__(self, other):
        if not isinstance(other, Options):
            return NotImplemented
        return vars(self) == vars(other)

    def __repr__(self):
        fields = ", ".join(f"{k.lstrip('_')}={v!r}" for k, v in vars(self).items())
        return f"Options({fields})"

    @property
    def seed(self):
        return self._seed

    @seed.setter
    def seed(self, val):
        self._seed = _check_count("seed", val, 0)

    @property
    def num_workers(self):
        return self._num_workers

    @num_workers.setter
    def num_workers(self, val):
        self._num_workers = _check_count("num_workers", val, 1)

    @property
    def verbose(self):
        return self._verbose

    @verbose.setter
    def verbose(self, val):
        self._verbose = bool(val)

    @property
    def theta_warn(self):
        return self._theta_warn

    @theta_warn.setter
    def theta_warn(self, val):
        self._theta_warn = _check_count("theta_warn", val, 0)

    @property
    def theta_limit(self):
        return self._theta_limit

    @theta_limit.setter
    def theta_limit(self, val):
        self._theta_limit = _check_count("theta_limit", val, 0)

    @property
    def powerset_bound(self):
        return self._powerset_bound

    @powerset_bound.setter
    def powerset_bound(self, val):
        self._powerset_bound = _check_count("powerset_bound", val, 0)

    @property
    def solve_bound(self):
        return self._solve_bound

    @solve_bound.setter
    def solve_bound(self, val):
        self._solve_bound = _check_count("solve_bound", val, 0)

    @property
    def mitm_bound(self):
        return self._mitm_bound

    @mitm_bound.setter
    def mitm_bound(self, val):
        self._mitm_bound = _check_count("mitm_bound", val, 0)

    @property
    def census_bound(self):
        return self._census_bound

    @census_bound.setter
    def census_bound(self, val):
        self._census_bound = _check_count("census_bound", val, 0)

    @property
    def bruteforce_bound(self):
        return self._bruteforce_bound

    @bruteforce_bound.setter
    def bruteforce_bound(self, val):
        self._bruteforce_bound = _check_count("bruteforce_bound", val, 0)

    @property
    def sat_bound(self):
        return self._sat_bound

    @sat_bound.setter
    def sat_bound(self, val):
        self._sat_bound = _check_count("sat_bound", val, 1)

    @property
    def surface_limit(self):
        return self._surface_limit

    @surface_limit.setter
    def surface_limit(self, val):
        self._surface_limit = _check_count("surface_limit", val, 1)


def resolve_options(options):
    """ The options to use when a caller passed None. """
    return Options() if options is None else options
