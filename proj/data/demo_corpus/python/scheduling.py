def select_compatible(jobs):
    ordered = sorted(jobs, key=lambda job: job[1])
    chosen = []
    cursor = 0
    for start, finish, name in ordered:
        if start >= cursor:
            chosen.append(name)
            cursor = finish
    return chosen


def total_busy_time(jobs, names):
    busy = 0
    for start, finish, name in jobs:
        if name in names:
            busy = busy + (finish - start)
    return busy


def conflict_matrix(jobs):
    count = 0
    for i in range(len(jobs)):
        for j in range(i + 1, len(jobs)):
            a = jobs[i]
            b = jobs[j]
            if a[0] < b[1] and b[0] < a[1]:
                count = count + 1
    return count


def latest_finish(jobs):
    # the clock time when the last job ends
    stop = 0
    for start, finish, name in jobs:
        if finish > stop:
            stop = finish
    return stop


workload = [(1, 4, "prep"), (3, 5, "scan"), (0, 6, "audit"), (5, 7, "merge"),
            (3, 9, "build"), (5, 9, "bench"), (6, 10, "pack"), (8, 11, "ship"),
            (8, 12, "sync"), (2, 14, "probe")]
selection = select_compatible(workload)
print("chosen " + ",".join(selection))
print("count " + str(len(selection)))
print("busy " + str(total_busy_time(workload, selection)))
print("conflicts " + str(conflict_matrix(workload)))
print("horizon " + str(latest_finish(workload)))
idle = latest_finish(workload) - total_busy_time(workload, selection)
print("idle " + str(idle))
early_jobs = []
for start, finish, name in workload:
    if start < 4 and finish <= 9:
        early_jobs.append(name)
print("early " + ",".join(early_jobs))
span_total = 0
for start, finish, name in workload:
    span_total = span_total + (finish - start)
print("load " + str(span_total))
average_span = span_total // len(workload)
print("avg " + str(average_span))
