def mean_of(values):
    total = 0.0
    for value in values:
        total = total + value
    return total / len(values)


def median_of(values):
    ordered = sorted(values)
    mid = len(ordered) // 2
    if len(ordered) % 2 == 1:
        return float(ordered[mid])
    return (ordered[mid - 1] + ordered[mid]) / 2.0


def variance_of(values):
    center = mean_of(values)
    accum = 0.0
    for value in values:
        spread = value - center
        accum = accum + spread * spread
    return accum / len(values)


def percentile(values, fraction):
    # nearest-rank percentile over the sorted data
    ordered = sorted(values)
    rank = int(fraction * (len(ordered) - 1))
    return ordered[rank]


def zscore_extremes(values):
    center = mean_of(values)
    spread = variance_of(values) ** 0.5
    low = 0
    high = 0
    for value in values:
        score = (value - center) / spread
        if score < -1.0:
            low = low + 1
        if score > 1.0:
            high = high + 1
    return low, high


def trimmed_sum(values, cut):
    ordered = sorted(values)
    total = 0
    for idx in range(cut, len(ordered) - cut):
        total = total + ordered[idx]
    return total


def rising_steps(values):
    steps = 0
    for idx in range(1, len(values)):
        if values[idx] > values[idx - 1]:
            steps = steps + 1
    return steps


readings = [12, 55, 31, 8, 42, 77, 23, 19, 64, 90, 37, 41, 5, 28, 70, 33]
print("mean %.3f" % mean_of(readings))
print("median %.1f" % median_of(readings))
print("var %.3f" % variance_of(readings))
print("p25 " + str(percentile(readings, 0.25)))
print("p75 " + str(percentile(readings, 0.75)))
low_count, high_count = zscore_extremes(readings)
print("tails " + str(low_count) + "/" + str(high_count))
span = max(readings) - min(readings)
print("span " + str(span))
above = 0
center = mean_of(readings)
for value in readings:
    if value > center:
        above = above + 1
print("above " + str(above))
buckets = [0, 0, 0]
for value in readings:
    slot = value // 31
    if slot > 2:
        slot = 2
    buckets[slot] = buckets[slot] + 1
print("buckets " + ",".join(str(v) for v in buckets))
print("trimmed " + str(trimmed_sum(readings, 2)))
print("rising " + str(rising_steps(readings)))
