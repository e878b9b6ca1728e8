"""The undefined linking number."""


class Undefined:
    """Singleton marking a linking number that does not exist because a lift is not torsion in homology."""

    _instance = None

    def __new__(cls):
        """Return the single instance."""
        if cls._instance is None:
            cls._instance = super(Undefined, cls).__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Undefined"

    def __bool__(self) -> bool:
        return False
