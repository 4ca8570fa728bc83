def knapsack_table(weights, values, capacity):
    items = len(weights)
    table = [[0] * (capacity + 1) for _ in range(items + 1)]
    for i in range(1, items + 1):
        for cap in range(capacity + 1):
            best = table[i - 1][cap]
            if weights[i - 1] <= cap:
                candidate = table[i - 1][cap - weights[i - 1]] + values[i - 1]
                if candidate > best:
                    best = candidate
            table[i][cap] = best
    return table


def chosen_items(table, weights, capacity):
    picks = []
    cap = capacity
    i = len(weights)
    while i > 0:
        if table[i][cap] != table[i - 1][cap]:
            picks.append(i - 1)
            cap = cap - weights[i - 1]
        i = i - 1
    picks.reverse()
    return picks


def total_of(indices, series):
    # add up the series entries named by indices
    total = 0
    for idx in indices:
        total = total + series[idx]
    return total


item_weights = [3, 4, 5, 8, 10, 2, 6, 7]
item_values = [9, 11, 13, 23, 29, 5, 15, 19]
limit = 20
grid = knapsack_table(item_weights, item_values, limit)
best_value = grid[len(item_weights)][limit]
selection = chosen_items(grid, item_weights, limit)
print("best " + str(best_value))
labels = []
for idx in selection:
    labels.append("#" + str(idx))
print("picked " + " ".join(labels))
print("weight " + str(total_of(selection, item_weights)))
print("value " + str(total_of(selection, item_values)))
row_digest = 0
for cap in range(limit + 1):
    row_digest = (row_digest * 3 + grid[4][cap]) % 99991
print("row4 " + str(row_digest))
density = []
for idx in range(len(item_weights)):
    score = item_values[idx] * 100 // item_weights[idx]
    density.append(score)
print("density " + ",".join(str(v) for v in density))
best_ratio = 0
for score in density:
    if score > best_ratio:
        best_ratio = score
print("peak " + str(best_ratio))
