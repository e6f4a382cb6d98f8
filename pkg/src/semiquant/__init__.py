"""semiquant: verification toolkit for hybrid quantum-classical dynamics."""

__version__ = "0.1.0"
