# Reading set relations off zones.
#
# Three groups of people: interested in books, technology and cars.  Some
# like only books, some only cars, some books and technology, and some all
# three.  Everyone into technology is also into books.

from setmosaic import (QuerySpec, SetSystem, count_pairwise_relations, sets_satisfying, subset_of,
                       zones_from_membership)

people = {
    "ann": ["Books"],
    "bob": ["Cars"],
    "cat": ["Books", "Technology"],
    "dan": ["Books", "Technology", "Cars"],
}
zs = zones_from_membership(SetSystem.from_dict(people))

# each zone is one exact combination of sets
for z in zs.zones:
    print(zs.ordered(z.signature), z.cardinality)

print("Technology within Books:", subset_of(zs, "Technology", "Books"))
print(count_pairwise_relations(zs))

# the question styles used in set-visualization studies
print("some also in Books:", sets_satisfying(zs, QuerySpec("intersect", ["Books"])))
print("all also in Books:", sets_satisfying(zs, QuerySpec("subset", ["Books"])))
print("none in both Books and Cars:", sets_satisfying(zs, QuerySpec("disjoint", ["Books", "Cars"])))
