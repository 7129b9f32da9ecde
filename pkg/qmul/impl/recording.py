''' A sink which materializes the gate list for replay
'''
import typing as t
from qmul.spec import GateSink, Gate, tally_gates

class Recording(GateSink):
  def __init__(self):
    super().__init__()
    self.gates: t.List[Gate] = []

  def gate(self, gate):
    self.gates.append(gate.validate())

  def tally(self):
    return tally_gates(self.gates)

  def __len__(self):
    return len(self.gates)

  def __iter__(self):
    return iter(self.gates)
