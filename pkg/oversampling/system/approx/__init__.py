"""Approximate duals, approximate transversals and their exponential sums."""
# Oversampling
from oversampling.system.approx.constellation import Constellation  # noQA
from oversampling.system.approx.constellation import CoverageReport  # noQA
from oversampling.system.approx.constellation import average_bound  # noQA
from oversampling.system.approx.constellation import build_constellation  # noQA
from oversampling.system.approx.constellation import exp_sum_average  # noQA
from oversampling.system.approx.constellation import multiscale_constellation  # noQA
from oversampling.system.approx.constellation import verify_coverage  # noQA
from oversampling.system.approx.dual import FiniteSet  # noQA
from oversampling.system.approx.dual import agreement_threshold  # noQA
from oversampling.system.approx.dual import approx_dual_decompose  # noQA
from oversampling.system.approx.dual import approx_dual_member  # noQA
