''' qmul: gate-level construction and physical resource estimation of quantum plus-equal multipliers
'''
