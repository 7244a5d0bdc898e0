"""
QuadStokes - nonconforming finite elements for the Stokes complex on quadrilateral and mixed grids
"""
