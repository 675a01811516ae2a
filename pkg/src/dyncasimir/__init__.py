"""Dynamic Casimir response kernels of deformable two-plate cavities."""
__version__ = "0.1.0"
