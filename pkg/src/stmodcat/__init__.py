"""stmodcat: exact computations in stable module categories of finite groups.

Subpackages:
  ff       dense exact linear algebra over GF(p^d)
  groups   finite groups as multiplication tables, subgroup machinery
  modrep   modular representations: homs, radicals, decompositions, syzygies
  blocks   block decompositions and principal-block idempotents
  stable   stable homs, triangles, induction/restriction, complete resolutions
  ghosts   ghost maps, lengths, and ghost numbers with certificates
  strings  string modules over dihedral 2-groups
  cases    named case studies exposed through the CLI
"""

__version__ = "0.1.0"
