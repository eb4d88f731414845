"""
Test suite for axcent.
"""
