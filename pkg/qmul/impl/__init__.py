''' qmul.impl: GateSink implementations and wrappers which builders stream their gates into
'''
