"""Error types shared across the package."""


class InternalCheckError(Exception):
    """A self-check that should hold by theory failed (signals a transcription bug)."""


class ResourceGuardError(Exception):
    """A requested computation exceeds the configured desk-scale limits."""
