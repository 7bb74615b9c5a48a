"""Test fixtures for the branchpair tests."""
