import numpy as np


class RandomStateMixin:
    @property
    def random_seed(self):
        return self._random_seed

    @random_seed.setter
    def random_seed(self, new_random_seed):
        if new_random_seed is None:
            new_random_seed = np.random.randint(2147483647)
        self._random_seed = new_random_seed
        self._rnd = np.random.RandomState(self._random_seed)

    @property
    def rnd(self):
        r"""

        A :class:`numpy.random.RandomState` seeded by :attr:`random_seed`.

        """
        if not hasattr(self, '_rnd'):
            self.random_seed = None
        return self._rnd
