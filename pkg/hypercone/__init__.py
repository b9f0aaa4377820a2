"""The main module for hypercone."""

try:
    import manhole

    manhole.install(verbose=False)
except ImportError:
    pass

__VERSION__ = "0.0.1"
