"""Command line plumbing."""
