"""Exact verification of one dimensional affine frames with rational dilation."""
# Oversampling
from oversampling.system.frames.averaging import AveragingRow  # noQA
from oversampling.system.frames.averaging import AveragingTable  # noQA
from oversampling.system.frames.averaging import averaging_experiment  # noQA
from oversampling.system.frames.functional import FunctionalReport  # noQA
from oversampling.system.frames.functional import coefficient_table  # noQA
from oversampling.system.frames.functional import frame_coefficient  # noQA
from oversampling.system.frames.functional import frame_functional  # noQA
from oversampling.system.frames.generators import BUILTINS  # noQA
from oversampling.system.frames.generators import GeneratorSet  # noQA
from oversampling.system.frames.generators import builtin  # noQA
from oversampling.system.frames.stepfunction import StepFunction  # noQA
from oversampling.system.frames.talpha import bessel_bound  # noQA
from oversampling.system.frames.talpha import check_dual  # noQA
from oversampling.system.frames.talpha import check_parseval  # noQA
from oversampling.system.frames.talpha import check_parseval_specialized  # noQA
from oversampling.system.frames.talpha import diagonal_sum  # noQA
from oversampling.system.frames.talpha import t_alpha  # noQA
