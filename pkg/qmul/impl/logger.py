''' A sink wrapper for logging.
This logs every gate and block it passes through to the underlying sink.

Usage:
sink = Logger(Counting())
'''

import logging
import traceback
from qmul.spec import GateSink

logger = logging.getLogger(__name__)

class Logger(GateSink):
  def __init__(self, sink: GateSink):
    super().__init__()
    self._sink = sink
    self._logger = logger.getChild(type(self._sink).__name__)
    self.counts_only = sink.counts_only

  @staticmethod
  def from_dict(*, sink):
    return Logger(
      sink=GateSink.from_dict(**sink),
    )

  def to_dict(self):
    return dict(super().to_dict(),
      sink=self._sink.to_dict(),
    )

  def _call(self, op, *args):
    method = f"{op}({', '.join(str(arg) for arg in args)})"
    try:
      ret = getattr(self._sink, op)(*args)
      self._logger.debug(method)
      return ret
    except Exception as e:
      self._logger.error(f"{method} raised {traceback.format_exc()}")
      raise e

  def gate(self, gate):
    return self._call('gate', gate)

  def absorb(self, tally):
    return self._call('absorb', tally)

  def tally(self):
    return self._sink.tally()
