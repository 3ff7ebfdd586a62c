"""Which Ulrich bundles on a quadric fail to be big."""
from ulrich_chern.classifier import classify_nonbig, evaluate_model, infinite_family_note, line_criterion_forces_big, UlrichModel
from ulrich_chern.spinor import spinor_rank

for n in range(2, 13):
    rows = classify_nonbig(n, 4 * spinor_rank(n))
    found = ", ".join(r.model.label() for r in rows) or "none"
    print(f"Q{n:<2} non-big: {found}")
    if note := infinite_family_note(n):
        print("     ", note)

# S' + S'' on Q6 is big: one Segre product is positive
row = evaluate_model(UlrichModel(6, 1, 1))
print("S' + S'' on Q6:", "big" if row.is_big else "not big", row.witness)

print("line criterion forces bigness from n =", min(n for n in range(3, 41) if line_criterion_forces_big(n)))
