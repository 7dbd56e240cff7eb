"""Coarse unit and principal-factor types of pure cubic fields and their closures.

Names are imported lazily so that light entry points (the type tables, the
two-split prime list) do not pay for loading sympy.
"""

import importlib

__version__ = "0.1.0"

_EXPORTS = {
    "class_group": ("ClassGroupResult", "class_group", "class_number", "principal_test"),
    "coarse_types": ("CoarseType", "CohomologyInvariants", "type_lattice", "types_for"),
    "cubic_field": ("CubicField", "FieldElement", "FracIdeal", "PrimeIdeal", "build_field", "field_for"),
    "cyclotomic": ("Conductor", "SplittingReport", "conductor_p3", "split_in_cyclotomic", "two_split_primes"),
    "dpf_classifier": (
        "absolute_dpf_dimension",
        "ambiguous_basis",
        "classify",
        "classify_field",
        "cube_saturate_units",
        "zeta_norm_invariant",
    ),
    "errors": (
        "ComputationFailure",
        "DegenerateRadicand",
        "DPFError",
        "InadmissiblePair",
        "InternalInconsistency",
        "InvalidPrime",
        "PrecisionExhausted",
        "RecognitionFailed",
    ),
    "radicand": ("Radicand", "Species", "normalize"),
    "sextic": ("SexticElement", "SexticField"),
    "units": ("UnitGroupL", "fundamental_unit"),
}
_WHERE = {name: mod for mod, names in _EXPORTS.items() for name in names}
__all__ = sorted(_WHERE)


def __getattr__(name):
    if name in _WHERE:
        return getattr(importlib.import_module(f".{_WHERE[name]}", __name__), name)
    raise AttributeError(name)
