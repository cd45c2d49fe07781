"""mahlerrev: polar duals and Mahler volumes of bodies of revolution."""

__version__ = "0.1.0"
