import pytest

from petersburg import backend

BACKENDS = ["compiled", "python"] if backend.compiled_available() else ["python"]


@pytest.fixture(params=BACKENDS)
def backend_kind(request):
    return request.param


class ScriptedGenerator:
    """Feeds a fixed word sequence to flip/play_game; odd word = HEAD."""

    def __init__(self, words):
        self._words = list(words)
        self._i = 0
        self.words_drawn = 0

    def next_word(self):
        w = self._words[self._i]
        self._i += 1
        self.words_drawn += 1
        return w


def words_for_tails(tail_counts):
    """Word script producing the given per-game tail counts."""
    script = []
    for t in tail_counts:
        script.extend([0] * t)
        script.append(1)
    return script
