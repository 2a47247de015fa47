"""Region amplitudes of oriented link diagrams and their reduction at rational points."""

__version__ = "0.1.0"
