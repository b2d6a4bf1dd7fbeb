"""Translation surfaces, saddle connections and cylinder counting."""
from .geom import Mat2, Vec2, sl2_element
from .surface import TranslationSurface, apply_matrix, area, cone_points, delaunay, is_isomorphic, stratum, validate
from .builders import RationalPolygon, build, unfold
from .census import cylinders_up_to, decompose, saddle_connections, shortest_sc

__version__ = "0.1.0"
