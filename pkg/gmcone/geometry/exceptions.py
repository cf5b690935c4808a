# -*- coding: utf-8 -*-

# This file is part of the gmcone project.


class GeometryError(ValueError):
    pass


class ZeroFoliationError(GeometryError):
    def __init__(self, message='zero foliation has no projective class'):
        super().__init__(message)


class InvalidCurveClassError(GeometryError):
    pass


class InvalidTeichPointError(GeometryError):
    pass


class InvalidMappingClassError(GeometryError):
    pass


class InvalidWalshPointError(GeometryError):
    pass


class FamilyMismatchError(GeometryError):
    pass


class InvalidSamplingError(GeometryError):
    pass


class InvalidNeighborhoodError(GeometryError):
    pass
