"""Encode x1 + ... + x8 < 3 to CNF, write DIMACS, read it back, and propagate."""
import io

from cardnet import encode_cardinality, read_dimacs, unit_propagate, write_dimacs

f = encode_cardinality(8, 3, "lt")
buf = io.StringIO()
write_dimacs(f, buf)
text = buf.getvalue()
print("\n".join(text.splitlines()[:3] + ["..."] + [ln for ln in text.splitlines() if ln.startswith("p ")]))

g = read_dimacs(io.StringIO(text))
assert g == f

# two inputs true: propagation must force every other input false
st = unit_propagate(g, [1, 5])
print("\nassume x1, x5 true")
print("forced false:", [i for i in range(1, 9) if st[i] is False])
print(st.format_trace().splitlines()[-1])
