"""Oversampling: exact lattice algebra and wavelet frame verification under lattice oversampling."""
