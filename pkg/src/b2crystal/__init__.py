"""Regular B2-type crystal graphs: crossing model, axioms, sky views, coordinates."""

__version__ = "0.1.0"
