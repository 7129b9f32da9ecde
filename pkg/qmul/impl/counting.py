''' A sink which only keeps aggregate counts.

Blocks with a closed-form tally are absorbed without generating their gates,
so estimates at thousands of bits never hold a gate list.
'''
from qmul.spec import GateSink, CircuitTally, EMPTY_TALLY, record_gate, merge_tally

class Counting(GateSink):
  counts_only = True

  def __init__(self):
    super().__init__()
    self._tally = EMPTY_TALLY

  def gate(self, gate):
    self._tally = record_gate(self._tally, gate)

  def absorb(self, tally: CircuitTally):
    self._tally = merge_tally(self._tally, tally)

  def tally(self):
    return self._tally
