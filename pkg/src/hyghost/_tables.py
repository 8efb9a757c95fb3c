"""Frozen geometric lookup tables (generated by
scripts/derive_tables.py -- do not edit by hand)."""

FACE_SIGN = {('hex', 'hex'): {(0, 0): -1,
                  (0, 1): 1,
                  (0, 2): 1,
                  (0, 3): -1,
                  (0, 4): -1,
                  (0, 5): 1,
                  (1, 0): 1,
                  (1, 1): -1,
                  (1, 2): -1,
                  (1, 3): 1,
                  (1, 4): 1,
                  (1, 5): -1,
                  (2, 0): 1,
                  (2, 1): -1,
                  (2, 2): -1,
                  (2, 3): 1,
                  (2, 4): 1,
                  (2, 5): -1,
                  (3, 0): -1,
                  (3, 1): 1,
                  (3, 2): 1,
                  (3, 3): -1,
                  (3, 4): -1,
                  (3, 5): 1,
                  (4, 0): -1,
                  (4, 1): 1,
                  (4, 2): 1,
                  (4, 3): -1,
                  (4, 4): -1,
                  (4, 5): 1,
                  (5, 0): 1,
                  (5, 1): -1,
                  (5, 2): -1,
                  (5, 3): 1,
                  (5, 4): 1,
                  (5, 5): -1},
 ('hex', 'prism'): {(0, 0): 1,
                    (0, 1): -1,
                    (0, 2): 1,
                    (1, 0): -1,
                    (1, 1): 1,
                    (1, 2): -1,
                    (2, 0): -1,
                    (2, 1): 1,
                    (2, 2): -1,
                    (3, 0): 1,
                    (3, 1): -1,
                    (3, 2): 1,
                    (4, 0): 1,
                    (4, 1): -1,
                    (4, 2): 1,
                    (5, 0): -1,
                    (5, 1): 1,
                    (5, 2): -1},
 ('prism', 'hex'): {(0, 0): 1,
                    (0, 1): -1,
                    (0, 2): -1,
                    (0, 3): 1,
                    (0, 4): 1,
                    (0, 5): -1,
                    (1, 0): -1,
                    (1, 1): 1,
                    (1, 2): 1,
                    (1, 3): -1,
                    (1, 4): -1,
                    (1, 5): 1,
                    (2, 0): 1,
                    (2, 1): -1,
                    (2, 2): -1,
                    (2, 3): 1,
                    (2, 4): 1,
                    (2, 5): -1},
 ('prism', 'prism'): {(0, 0): -1,
                      (0, 1): 1,
                      (0, 2): -1,
                      (1, 0): 1,
                      (1, 1): -1,
                      (1, 2): 1,
                      (2, 0): -1,
                      (2, 1): 1,
                      (2, 2): -1,
                      (3, 3): -1,
                      (3, 4): 1,
                      (4, 3): 1,
                      (4, 4): -1},
 ('prism', 'tet'): {(3, 0): -1,
                    (3, 1): 1,
                    (3, 2): -1,
                    (3, 3): 1,
                    (4, 0): 1,
                    (4, 1): -1,
                    (4, 2): 1,
                    (4, 3): -1},
 ('tet', 'prism'): {(0, 3): -1,
                    (0, 4): 1,
                    (1, 3): 1,
                    (1, 4): -1,
                    (2, 3): -1,
                    (2, 4): 1,
                    (3, 3): 1,
                    (3, 4): -1},
 ('tet', 'tet'): {(0, 0): -1,
                  (0, 1): 1,
                  (0, 2): -1,
                  (0, 3): 1,
                  (1, 0): 1,
                  (1, 1): -1,
                  (1, 2): 1,
                  (1, 3): -1,
                  (2, 0): -1,
                  (2, 1): 1,
                  (2, 2): -1,
                  (2, 3): 1,
                  (3, 0): 1,
                  (3, 1): -1,
                  (3, 2): 1,
                  (3, 3): -1}}

HEX_EXTRUDE = {(0, 0): (0, ((0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0)), 0),
 (1, 0): (0, ((0, 0, -1, 1), (1, 0, 0, 0), (0, 1, 0, 0)), 1),
 (2, 0): (0, ((1, 0, 0, 0), (0, 0, 0, 0), (0, 1, 0, 0)), 2),
 (3, 0): (0, ((1, 0, 0, 0), (0, 0, -1, 1), (0, 1, 0, 0)), 3),
 (4, 0): (0, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 0)), 4),
 (5, 0): (0, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 1)), 5)}

PRISM_EXTRUDE = {(0, 0): (0, ((0, 0, -1, 1), (1, 0, 0, 0), (0, 1, 0, 0)), 0),
 (1, 0): (0, ((1, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0)), 1),
 (2, 0): (0, ((1, 0, 0, 0), (0, 0, 0, 0), (0, 1, 0, 0)), 2),
 (3, 0): (0, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 0)), 3),
 (3, 1): (1, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 0)), 3),
 (4, 0): (0, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 1)), 4),
 (4, 1): (1, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 1)), 4)}

QUAD_EXTRUDE = {(0, 0): (0, ((0, 0, 0, 0), (1, 0, 0, 0)), 0),
 (1, 0): (0, ((0, 0, -1, 1), (1, 0, 0, 0)), 1),
 (2, 0): (0, ((1, 0, 0, 0), (0, 0, 0, 0)), 2),
 (3, 0): (0, ((1, 0, 0, 0), (0, 0, -1, 1)), 3)}

TET_BOUNDARY = {(0, 0): (0, (2, 1)),
 (0, 1): (0, (2, 1)),
 (0, 2): (0, (0, 2)),
 (0, 3): (0, (0, 2)),
 (1, 0): (1, (2, 1)),
 (2, 2): (1, (2, 1)),
 (4, 1): (1, (0, 2)),
 (5, 3): (1, (0, 2))}

TET_CHILD_FACE = {(0, 0): [0, 0, 0, 0],
 (0, 1): [1, 1, 2, 1],
 (0, 2): [2, 2, 1, 2],
 (0, 3): [3, 3, 3, 3],
 (1, 0): [0, 0, 0, 0],
 (1, 1): [1, 1, 2, 1],
 (1, 2): [2, 2, 1, 2],
 (1, 3): [3, 3, 3, 3],
 (2, 0): [0, 0, 0, 0],
 (2, 1): [1, 1, 2, 1],
 (2, 2): [2, 1, 2, 2],
 (2, 3): [3, 3, 3, 3],
 (3, 0): [0, 0, 0, 0],
 (3, 1): [1, 2, 1, 1],
 (3, 2): [2, 2, 1, 2],
 (3, 3): [3, 3, 3, 3],
 (4, 0): [0, 0, 0, 0],
 (4, 1): [1, 2, 1, 1],
 (4, 2): [2, 1, 2, 2],
 (4, 3): [3, 3, 3, 3],
 (5, 0): [0, 0, 0, 0],
 (5, 1): [1, 2, 1, 1],
 (5, 2): [2, 1, 2, 2],
 (5, 3): [3, 3, 3, 3]}

TET_CHILD_INDEX = {0: {(0, 0): 0, (1, 0): 1, (1, 4): 2, (1, 5): 3, (5, 0): 4, (5, 1): 5, (5, 2): 6, (7, 0): 7},
 1: {(0, 1): 0, (1, 1): 1, (1, 2): 2, (1, 3): 3, (3, 0): 4, (3, 1): 5, (3, 5): 6, (7, 1): 7},
 2: {(0, 2): 0, (2, 0): 1, (2, 1): 2, (2, 2): 3, (3, 2): 4, (3, 3): 5, (3, 4): 6, (7, 2): 7},
 3: {(0, 3): 0, (2, 3): 1, (2, 4): 2, (2, 5): 3, (6, 1): 4, (6, 2): 5, (6, 3): 6, (7, 3): 7},
 4: {(0, 4): 0, (4, 2): 1, (4, 3): 2, (4, 4): 3, (6, 0): 4, (6, 4): 5, (6, 5): 6, (7, 4): 7},
 5: {(0, 5): 0, (4, 0): 1, (4, 1): 2, (4, 5): 3, (5, 3): 4, (5, 4): 5, (5, 5): 6, (7, 5): 7}}

TET_CHILDREN = {0: [([0, 0, 0], 0),
     ([1, 0, 0], 0),
     ([1, 0, 0], 4),
     ([1, 0, 0], 5),
     ([1, 0, 1], 0),
     ([1, 0, 1], 1),
     ([1, 0, 1], 2),
     ([1, 1, 1], 0)],
 1: [([0, 0, 0], 1),
     ([1, 0, 0], 1),
     ([1, 0, 0], 2),
     ([1, 0, 0], 3),
     ([1, 1, 0], 0),
     ([1, 1, 0], 1),
     ([1, 1, 0], 5),
     ([1, 1, 1], 1)],
 2: [([0, 0, 0], 2),
     ([0, 1, 0], 0),
     ([0, 1, 0], 1),
     ([0, 1, 0], 2),
     ([1, 1, 0], 2),
     ([1, 1, 0], 3),
     ([1, 1, 0], 4),
     ([1, 1, 1], 2)],
 3: [([0, 0, 0], 3),
     ([0, 1, 0], 3),
     ([0, 1, 0], 4),
     ([0, 1, 0], 5),
     ([0, 1, 1], 1),
     ([0, 1, 1], 2),
     ([0, 1, 1], 3),
     ([1, 1, 1], 3)],
 4: [([0, 0, 0], 4),
     ([0, 0, 1], 2),
     ([0, 0, 1], 3),
     ([0, 0, 1], 4),
     ([0, 1, 1], 0),
     ([0, 1, 1], 4),
     ([0, 1, 1], 5),
     ([1, 1, 1], 4)],
 5: [([0, 0, 0], 5),
     ([0, 0, 1], 0),
     ([0, 0, 1], 1),
     ([0, 0, 1], 5),
     ([1, 0, 1], 3),
     ([1, 0, 1], 4),
     ([1, 0, 1], 5),
     ([1, 1, 1], 5)]}

TET_CHILDREN_AT_FACE = {(0, 0): [1, 4, 5, 7],
 (0, 1): [0, 4, 6, 7],
 (0, 2): [0, 1, 2, 7],
 (0, 3): [0, 1, 3, 4],
 (1, 0): [1, 4, 5, 7],
 (1, 1): [0, 5, 6, 7],
 (1, 2): [0, 1, 3, 7],
 (1, 3): [0, 1, 2, 5],
 (2, 0): [3, 4, 5, 7],
 (2, 1): [0, 4, 6, 7],
 (2, 2): [0, 1, 3, 7],
 (2, 3): [0, 2, 3, 4],
 (3, 0): [1, 5, 6, 7],
 (3, 1): [0, 4, 6, 7],
 (3, 2): [0, 1, 3, 7],
 (3, 3): [0, 1, 2, 6],
 (4, 0): [3, 5, 6, 7],
 (4, 1): [0, 4, 5, 7],
 (4, 2): [0, 1, 3, 7],
 (4, 3): [0, 2, 3, 5],
 (5, 0): [3, 5, 6, 7],
 (5, 1): [0, 4, 6, 7],
 (5, 2): [0, 2, 3, 7],
 (5, 3): [0, 1, 3, 6]}

TET_EXTRUDE = {(0, 0): (0, ((0, 0, -1, 1), (0, 1, 0, 0), (1, 0, 0, 0)), 0),
 (0, 1): (1, ((0, 0, -1, 1), (0, 1, 0, 0), (1, 0, 0, 0)), 0),
 (1, 0): (0, ((1, 0, 0, 0), (0, 1, 0, 0), (1, 0, 0, 0)), 1),
 (1, 1): (2, ((1, 0, 0, 0), (0, 1, 0, 0), (1, 0, 0, 0)), 2),
 (2, 0): (0, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 1, 0, 0)), 2),
 (2, 1): (4, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 1, 0, 0)), 1),
 (3, 0): (0, ((1, 0, 0, 0), (0, 0, 0, 0), (0, 1, 0, 0)), 3),
 (3, 1): (5, ((1, 0, 0, 0), (0, 0, 0, 0), (0, 1, 0, 0)), 3)}

TET_FACE_NEIGHBOR = {(0, 0): ([1, 0, 0], 4, 3),
 (0, 1): ([0, 0, 0], 5, 1),
 (0, 2): ([0, 0, 0], 1, 2),
 (0, 3): ([0, -1, 0], 2, 0),
 (1, 0): ([1, 0, 0], 3, 3),
 (1, 1): ([0, 0, 0], 2, 1),
 (1, 2): ([0, 0, 0], 0, 2),
 (1, 3): ([0, 0, -1], 5, 0),
 (2, 0): ([0, 1, 0], 0, 3),
 (2, 1): ([0, 0, 0], 1, 1),
 (2, 2): ([0, 0, 0], 3, 2),
 (2, 3): ([0, 0, -1], 4, 0),
 (3, 0): ([0, 1, 0], 5, 3),
 (3, 1): ([0, 0, 0], 4, 1),
 (3, 2): ([0, 0, 0], 2, 2),
 (3, 3): ([-1, 0, 0], 1, 0),
 (4, 0): ([0, 0, 1], 2, 3),
 (4, 1): ([0, 0, 0], 3, 1),
 (4, 2): ([0, 0, 0], 5, 2),
 (4, 3): ([-1, 0, 0], 0, 0),
 (5, 0): ([0, 0, 1], 1, 3),
 (5, 1): ([0, 0, 0], 0, 1),
 (5, 2): ([0, 0, 0], 4, 2),
 (5, 3): ([0, -1, 0], 3, 0)}

TET_PARENT_TYPE = {(0, 0): 0,
 (0, 1): 0,
 (0, 2): 2,
 (0, 3): 1,
 (0, 4): 5,
 (0, 5): 0,
 (0, 6): 4,
 (0, 7): 0,
 (1, 0): 1,
 (1, 1): 1,
 (1, 2): 2,
 (1, 3): 1,
 (1, 4): 5,
 (1, 5): 0,
 (1, 6): 3,
 (1, 7): 1,
 (2, 0): 2,
 (2, 1): 1,
 (2, 2): 2,
 (2, 3): 2,
 (2, 4): 4,
 (2, 5): 0,
 (2, 6): 3,
 (2, 7): 2,
 (3, 0): 3,
 (3, 1): 1,
 (3, 2): 3,
 (3, 3): 2,
 (3, 4): 4,
 (3, 5): 5,
 (3, 6): 3,
 (3, 7): 3,
 (4, 0): 4,
 (4, 1): 0,
 (4, 2): 3,
 (4, 3): 2,
 (4, 4): 4,
 (4, 5): 5,
 (4, 6): 4,
 (4, 7): 4,
 (5, 0): 5,
 (5, 1): 0,
 (5, 2): 3,
 (5, 3): 1,
 (5, 4): 5,
 (5, 5): 5,
 (5, 6): 4,
 (5, 7): 5}

TET_TREE_FACE = {(0, 0): 0, (0, 1): 1, (0, 2): 2, (0, 3): 3, (1, 0): 0, (2, 2): 1, (4, 1): 2, (5, 3): 3}

TRANSFORM_INVERSE = {'quad': {(0, -1): 0,
          (0, 1): 0,
          (1, -1): 1,
          (1, 1): 2,
          (2, -1): 2,
          (2, 1): 1,
          (3, -1): 3,
          (3, 1): 3},
 'tri': {(0, -1): 0, (0, 1): 0, (1, -1): 1, (1, 1): 2, (2, -1): 2, (2, 1): 1}}

TRI_BOUNDARY = {(0, 0): (0, (1,)), (0, 1): (0, (0,)), (0, 2): (0, (0,))}

TRI_CHILD_FACE = {(0, 0): [0, 0], (0, 1): [1, 1], (0, 2): [2, 2], (1, 0): [0, 0], (1, 1): [1, 1], (1, 2): [2, 2]}

TRI_CHILD_INDEX = {0: {(0, 0): 0, (1, 0): 1, (1, 1): 2, (3, 0): 3}, 1: {(0, 1): 0, (2, 0): 1, (2, 1): 2, (3, 1): 3}}

TRI_CHILDREN = {0: [([0, 0], 0), ([1, 0], 0), ([1, 0], 1), ([1, 1], 0)],
 1: [([0, 0], 1), ([0, 1], 0), ([0, 1], 1), ([1, 1], 1)]}

TRI_CHILDREN_AT_FACE = {(0, 0): [1, 3], (0, 1): [0, 3], (0, 2): [0, 1], (1, 0): [2, 3], (1, 1): [0, 3], (1, 2): [0, 2]}

TRI_EXTRUDE = {(0, 0): (0, ((0, 0, -1, 1), (1, 0, 0, 0)), 0),
 (1, 0): (0, ((1, 0, 0, 0), (1, 0, 0, 0)), 1),
 (2, 0): (0, ((1, 0, 0, 0), (0, 0, 0, 0)), 2)}

TRI_FACE_NEIGHBOR = {(0, 0): ([1, 0], 1, 2),
 (0, 1): ([0, 0], 1, 1),
 (0, 2): ([0, -1], 1, 0),
 (1, 0): ([0, 1], 0, 2),
 (1, 1): ([0, 0], 0, 1),
 (1, 2): ([-1, 0], 0, 0)}

TRI_PARENT_TYPE = {(0, 0): 0, (0, 1): 0, (0, 2): 1, (0, 3): 0, (1, 0): 1, (1, 1): 0, (1, 2): 1, (1, 3): 1}

TRI_TREE_FACE = {(0, 0): 0, (0, 1): 1, (0, 2): 2}
