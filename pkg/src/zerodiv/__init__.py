"""Cayley-Dickson zero divisors: trip arithmetic, box-kites, emanation tables."""

from .boxkites import (
    Assessor,
    BoxKite,
    Context,
    EdgeSign,
    KiteType,
    assessor_of,
    classify_kite_type,
    discover_boxkites,
    dmz_edge,
    emanation_third,
    sail_trip_system,
    strut_opposite,
    vizier_check,
)
from .cdp_core import (
    SignedUnit,
    Trip,
    enumerate_trips,
    orient_trip,
    rule1_trips,
    rule2_trips,
    unit_product,
    zero_pad,
)
from .doubling import calibrate_convention, doubling_product
from .emanation import (
    EmanationTable,
    band_class,
    build_table,
    census,
    extract_zigzags,
    fill_stats,
    flipbook,
    label_order,
)
from .genealogy import genealogy_run, pathion_family, trip_machine

__version__ = "0.1.0"

__all__ = [
    "Assessor",
    "BoxKite",
    "Context",
    "EdgeSign",
    "EmanationTable",
    "KiteType",
    "SignedUnit",
    "Trip",
    "assessor_of",
    "band_class",
    "build_table",
    "calibrate_convention",
    "census",
    "classify_kite_type",
    "discover_boxkites",
    "dmz_edge",
    "doubling_product",
    "emanation_third",
    "enumerate_trips",
    "extract_zigzags",
    "fill_stats",
    "flipbook",
    "genealogy_run",
    "label_order",
    "orient_trip",
    "pathion_family",
    "rule1_trips",
    "rule2_trips",
    "sail_trip_system",
    "strut_opposite",
    "trip_machine",
    "unit_product",
    "vizier_check",
    "zero_pad",
]
