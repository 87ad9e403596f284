'''
atomlab
=======

Exact enumeration of atoms (irreducible elements) up to associates in
rings of the form

    R = K + V_1 X + ... + V_{n-1} X^{n-1} + F[[X]] X^n

where K is a subfield of a finite field F and the V_j are K-subspaces of
F with V_i V_j in V_{i+j}. Around that: ideal powers and universality,
the multiplier ring [M:M] and the group V, closed-form counts for named
families, and sweeps over those families.

The modules build on each other bottom-up:

    gf -> linalg -> ring -> atoms <-> structure -> verify, search -> cli
'''
