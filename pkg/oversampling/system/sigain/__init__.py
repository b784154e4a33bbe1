"""Shift-invariance gain of wavelet spaces from support overlaps."""
# Oversampling
from oversampling.system.sigain.gain import INFINITE_CLASS  # noQA
from oversampling.system.sigain.gain import CrosscheckReport  # noQA
from oversampling.system.sigain.gain import CrosscheckRow  # noQA
from oversampling.system.sigain.gain import behera_class  # noQA
from oversampling.system.sigain.gain import candidate_shifts  # noQA
from oversampling.system.sigain.gain import oversample_crosscheck  # noQA
from oversampling.system.sigain.gain import oversample_with_support  # noQA
from oversampling.system.sigain.gain import overlapping_shifts  # noQA
from oversampling.system.sigain.gain import si_gain_check  # noQA
from oversampling.system.sigain.gain import support_condition  # noQA
from oversampling.system.sigain.regions import REGIONS  # noQA
from oversampling.system.sigain.regions import RegionSet  # noQA
from oversampling.system.sigain.regions import box_pair  # noQA
from oversampling.system.sigain.regions import overlap_measure  # noQA
