from abc import ABC, abstractmethod
from functools import lru_cache

from errors import InvalidParameter

# Exact moments are ints; anything built on irrational atoms is a float.
Moment = int | float


class SpectralDistribution(ABC):
    """
    Base interface for compactly supported symmetric probability distributions,
    known through their moments. Variants are immutable and hashable, so
    moments are memoized per (distribution, m).
    """

    @property
    @abstractmethod
    def label(self) -> str:
        """Short human readable name, e.g. 'arcsine' or 'mellin(semicircle, arcsine)'."""

    @property
    def exact(self) -> bool:
        """True when every moment is an exact integer."""
        return True

    @abstractmethod
    def _moment(self, m: int) -> Moment:
        """
        :param m: A validated moment order, m >= 0
        :return: M_m, the m-th moment

        Constraint:
            * M_0 = 1
            * odd moments vanish (exactly for exact variants)
        """

    def moment(self, m: int) -> Moment:
        """
        :param m: Moment order
        :return: M_m = integral of x^m against the distribution
        """
        if m < 0:
            raise InvalidParameter(f"Moment order must be >= 0, got {m}")
        return _memoized_moment(self, m)

    def moments(self, m_max: int) -> list[Moment]:
        return [self.moment(m) for m in range(m_max + 1)]


@lru_cache(maxsize=None)
def _memoized_moment(distribution: SpectralDistribution, m: int) -> Moment:
    return distribution._moment(m)
