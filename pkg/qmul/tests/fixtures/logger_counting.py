def sink():
  from qmul.impl.logger import Logger
  from qmul.impl.counting import Counting
  yield Logger(Counting())
