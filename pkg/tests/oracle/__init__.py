#  License: Apache Software License 2.0

"""Testing for the diagentropy.oracle package."""
