import matplotlib.pyplot as plt
import numpy as np

import models.seven_mode.canonical as canonical
import models.seven_mode.classification as classification

labels = list(canonical.RANK_N)
reports = [classification.classify7(canonical.canonical_state7(label))
           for label in labels]

for label, report in zip(labels, reports):
    print(f"{label.name:>5}  rank(N) = {report.rank_n}  "
          f"(expected {canonical.RANK_N[label]})  J = {report.j:.3f}  "
          f"class {report.label.label}")

# Singular values of N on a log scale; the gap marks the rank cut.
for k, report in enumerate(reports):
    sv = np.maximum(report.singular_values, 1e-18)
    plt.semilogy([k] * sv.size, sv, 'ob', markersize=4)
plt.xticks(range(len(labels)), [label.name for label in labels])
plt.xlabel('Canonical form')
plt.ylabel('Singular values of N')
plt.grid(True)
plt.show()
