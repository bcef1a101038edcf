#!/usr/bin/env python

#   MpZeta 1.0, boundary terms and mean-periodicity of zeta functions.
#               Copyright (C) 2022  The MpZeta developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#      the Free Software Foundation, either version 3 of the License, or
#                  (at your option) any later version.
#
#     This program is distributed in the hope that it will be useful,
#     but WITHOUT ANY WARRANTY; without even the implied warranty of
#      MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#              GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program.  If not, see https://www.gnu.org/licenses/.


"""Single-sign scans and desk-scale estimates on zeros and sizes of L-functions."""

from mpzeta.analytics.signscan import *
from mpzeta.analytics.appendix import *
