"""Generate "Jean aime Marie" from an unordered bag and watch the chart fill.

Run:  python demos/worked_example.py
"""

from sbgen import GenSession, data_path, read_bag, read_grammar

grammar = read_grammar(data_path("french.sbg"))
bag = read_bag(data_path("jean_aime_marie.sbb"))

print("bag (deliberately out of order):")
for i, sign in enumerate(bag, 1):
    print(f"  {i}: {sign}")

session = GenSession(bag, grammar)
session.seed()
step = 0
while (edge := session.step()) is not None:
    step += 1
    print(f"({step:2d}) {edge}")

# Marie can start an s edge too, but its vp slot wants index m and the only
# vp in the chart has j as its first index, so that hypothesis dies quietly.
print()
print("sentences:", [" ".join(s) for s in session.solutions])
print("edges in chart:", len(session.chart))
