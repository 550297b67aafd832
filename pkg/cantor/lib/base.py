class Immutable:
    """Base class for immutable value objects.

    Immutable objects cannot be modified once created. Any modification methods will
    return a new object, leaving the original object as it was.

    Combinations, partitions, iterated function systems and family parameters are
    all values: they are validated once when constructed and then shared freely
    between threads, so a rendering worker never sees a half-updated parameter set.

    The ``Immutable`` class does not actually enforce immutability--subclasses are
    responsible for enforcing immutability. Thus inheriting ``Immutable`` just serves as
    documentation.

    """

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        raise NotImplementedError
