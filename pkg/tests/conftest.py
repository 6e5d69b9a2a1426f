import pytest

from bgwkem import make_mock_group


class ScriptedRng:
    """Feeds a fixed sequence of values to code expecting random.Random.

    Each randrange call pops the next scripted value and asserts it lies in
    the requested range, so a test fails loudly if the code under test
    consumes randomness in an unexpected order.
    """

    def __init__(self, values, byte_values=()):
        self.values = list(values)
        self.byte_values = list(byte_values)

    def randrange(self, start, stop=None):
        if stop is None:
            start, stop = 0, start
        value = self.values.pop(0)
        assert start <= value < stop, (start, value, stop)
        return value

    def randbytes(self, n):
        data = self.byte_values.pop(0)
        assert len(data) == n
        return data


@pytest.fixture
def scripted():
    return ScriptedRng


@pytest.fixture
def mock101():
    return make_mock_group(101)
