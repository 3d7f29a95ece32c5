from ._logger import LoggerMixin
from ._random_state import RandomStateMixin


__all__ = (
    'LoggerMixin',
    'RandomStateMixin',
)
