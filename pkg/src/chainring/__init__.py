"""
chainring - exact-arithmetic laboratory for finite valuation rings.

Finite chain rings of order q^r, the product and Erdos-Renyi bipartite graphs
over them, and desk-scale verification experiments for dot products,
simplices, incidences, areas, permanents and sum-product structure.
"""

__version__ = "0.1.0"
