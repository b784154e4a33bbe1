"""Serialization of domain objects and the schemas of input documents."""
