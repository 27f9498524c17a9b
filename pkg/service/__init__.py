"""
PPA Reductions Toolkit - Service Package
"""
