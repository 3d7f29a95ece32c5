import logging


class LoggerMixin:
    @property
    def logger(self):
        return logging.getLogger(f'coxlab.{self.__class__.__name__}')
