"""A U-polyhedron: the great rhombicosidodecahedron and six symmetry axes."""

# %% Search the icosahedral axes
import json

from cyclotomo import demo_3d_upolyhedron

rep = demo_3d_upolyhedron()
print(json.dumps(rep.to_json(), indent=2))
