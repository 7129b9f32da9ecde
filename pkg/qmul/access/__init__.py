''' qmul.access: user-facing surfaces (command line, CSV/JSON reports) over the builders and estimator
'''
