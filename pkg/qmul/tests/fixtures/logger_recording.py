def sink():
  from qmul.impl.logger import Logger
  from qmul.impl.recording import Recording
  yield Logger(Recording())
