"""Checkers for the lattice conditions under which oversampling preserves frame bounds."""
# Oversampling
from oversampling.system.conditions.checks import Prop36Report  # noQA
from oversampling.system.conditions.checks import ReducedPair  # noQA
from oversampling.system.conditions.checks import certificate_1d  # noQA
from oversampling.system.conditions.checks import check_general_strong  # noQA
from oversampling.system.conditions.checks import check_strong  # noQA
from oversampling.system.conditions.checks import check_support_strong  # noQA
from oversampling.system.conditions.checks import check_support_weak  # noQA
from oversampling.system.conditions.checks import check_weak  # noQA
from oversampling.system.conditions.checks import prop36_battery  # noQA
from oversampling.system.conditions.checks import reduce_general  # noQA
from oversampling.system.conditions.dilation import DilationSpec  # noQA
from oversampling.system.conditions.verdict import Certificate  # noQA
from oversampling.system.conditions.verdict import Status  # noQA
from oversampling.system.conditions.verdict import Verdict  # noQA
