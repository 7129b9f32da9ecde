def sink():
  from qmul.impl.counting import Counting
  yield Counting()
