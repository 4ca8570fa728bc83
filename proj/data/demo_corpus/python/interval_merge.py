def merge_intervals(intervals):
    ordered = sorted(intervals)
    merged = []
    for start, end in ordered:
        if len(merged) == 0:
            merged.append([start, end])
            continue
        last = merged[-1]
        if start <= last[1]:
            if end > last[1]:
                last[1] = end
        else:
            merged.append([start, end])
    return merged


def total_coverage(intervals):
    covered = 0
    for start, end in merge_intervals(intervals):
        covered = covered + (end - start)
    return covered


def gaps_between(intervals):
    merged = merge_intervals(intervals)
    holes = []
    for idx in range(1, len(merged)):
        gap_start = merged[idx - 1][1]
        gap_end = merged[idx][0]
        if gap_end > gap_start:
            holes.append((gap_start, gap_end))
    return holes


def overlap_count(intervals):
    # pairs of raw intervals that intersect
    count = 0
    for i in range(len(intervals)):
        for j in range(i + 1, len(intervals)):
            a = intervals[i]
            b = intervals[j]
            if a[0] < b[1] and b[0] < a[1]:
                count = count + 1
    return count


bookings = [(1, 4), (2, 6), (8, 10), (15, 18), (17, 20), (9, 12), (25, 30), (5, 6)]
merged_list = merge_intervals(bookings)
parts = []
for start, end in merged_list:
    parts.append(str(start) + "-" + str(end))
print("merged " + ",".join(parts))
print("cover " + str(total_coverage(bookings)))
hole_parts = []
for start, end in gaps_between(bookings):
    hole_parts.append(str(start) + "-" + str(end))
print("gaps " + ",".join(hole_parts))
print("overlaps " + str(overlap_count(bookings)))
print("blocks " + str(len(merged_list)))
