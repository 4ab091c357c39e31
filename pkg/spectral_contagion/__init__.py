__version__ = "0.1.0"
__author__ = "Spectral Contagion contributors"
