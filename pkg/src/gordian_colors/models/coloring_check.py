"""The result of checking a coloring against a diagram."""

import typing as t


class ColoringCheck(t.NamedTuple):
    """Whether every crossing relation holds, and the first crossing where one fails."""

    valid: bool
    crossing: t.Optional[int] = None

    def __bool__(self) -> bool:
        return self.valid
