import pytest
import pathlib

@pytest.fixture(params=[
  p.stem
  for p in (pathlib.Path(__file__).parent / 'fixtures').glob('[!_]*.py')
])
def sink(request):
  ''' Load different sink implementations from fixtures directory to be tested uniformly
  '''
  import importlib
  yield from importlib.import_module(f"qmul.tests.fixtures.{request.param}").sink()
