"""
Test suite for mhdforms
"""
