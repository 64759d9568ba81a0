"""Unit test package for diagentropy."""
