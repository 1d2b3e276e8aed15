"""Minimal unique substrings, shortest unique substring queries, and
combinatorial bounds on the number of point and interval SUSs."""
from .enumeration import (
    BoundReport, ChargingMap, PointSusSet, analyze, build_charging, check_finv2_structure,
    enumerate_interval_sus, enumerate_point_sus, verify_bounds,
)
from .extremal import gen_interval_family, gen_point_tight, gen_sigma_family
from .mus import MusList, check_mus_invariants, compute_mus, meaningless_mus
from .query import SusAnswer, cover, interval_sus, point_sus
from .suffix_index import SuffixIndex, build_index, occurrence_count
from .text import Interval, Text, contains, make_text, substring

__version__ = "0.1.0"
