"""Words in free groups: letters are ``±(g + 1)`` for generator index ``g``."""

import typing as t

from .permutation_utils import Perm, PermutationUtils


Word = t.Tuple[int, ...]
"""A group word; letter ``g + 1`` is generator ``g`` and ``-(g + 1)`` its inverse."""


class WordUtils:
    """Static helpers for group words."""

    @staticmethod
    def letter(generator: int, exponent: int = 1) -> int:
        """Return the letter for ``generator`` (0-based) raised to ``±1``."""
        return generator + 1 if exponent > 0 else -(generator + 1)

    @staticmethod
    def generator(letter: int) -> int:
        """Return the 0-based generator index of ``letter``."""
        return abs(letter) - 1

    @staticmethod
    def inverse(word: t.Sequence[int]) -> Word:
        return tuple(-letter for letter in reversed(word))

    @classmethod
    def power(cls, word: t.Sequence[int], k: int) -> Word:
        base = tuple(word) if k >= 0 else cls.inverse(word)
        return base * abs(k)

    @staticmethod
    def free_reduce(word: t.Iterable[int]) -> Word:
        """Cancel adjacent inverse pairs until none remain."""
        stack: t.List[int] = []
        for letter in word:
            if stack and stack[-1] == -letter:
                stack.pop()
            else:
                stack.append(letter)
        return tuple(stack)

    @staticmethod
    def abelianize(word: t.Iterable[int], generators: int) -> t.List[int]:
        """Return the exponent sum of every generator."""
        counts = [0] * generators
        for letter in word:
            counts[abs(letter) - 1] += 1 if letter > 0 else -1
        return counts

    @staticmethod
    def evaluate(word: t.Iterable[int], images: t.Sequence[Perm]) -> Perm:
        """Map a word into a permutation group; products compose left to right as ``g_1 ∘ g_2 ∘ ⋯``."""
        result = PermutationUtils.identity(len(images[0])) if images else ()
        for letter in word:
            image = images[abs(letter) - 1]
            result = PermutationUtils.compose(result, image if letter > 0 else PermutationUtils.inverse(image))
        return result

    @staticmethod
    def to_text(word: t.Sequence[int], labels: t.Optional[t.Sequence[str]] = None) -> str:
        """Render a word as ``x0 x1^-1 …``; the empty word is ``1``."""
        if not word:
            return "1"
        parts = []
        for letter in word:
            name = labels[abs(letter) - 1] if labels else f"x{abs(letter) - 1}"
            parts.append(name if letter > 0 else f"{name}^-1")
        return " ".join(parts)
