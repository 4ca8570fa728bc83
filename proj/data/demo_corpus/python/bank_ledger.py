def apply_transaction(balance, kind, amount):
    if kind == "deposit":
        return balance + amount
    if kind == "withdraw":
        if amount <= balance:
            return balance - amount
        return balance
    if kind == "fee":
        return balance - amount
    return balance


def run_ledger(opening, transactions):
    balance = opening
    rejected = 0
    history = [opening]
    for kind, amount in transactions:
        updated = apply_transaction(balance, kind, amount)
        if updated == balance and kind == "withdraw":
            rejected = rejected + 1
        balance = updated
        history.append(balance)
    return balance, rejected, history


def interest_projection(balance, rate_percent, months):
    projected = balance
    for _ in range(months):
        gain = projected * rate_percent // 100
        projected = projected + gain
    return projected


def low_water_mark(history):
    # smallest balance ever seen
    lowest = history[0]
    for value in history:
        if value < lowest:
            lowest = value
    return lowest


activity = [("deposit", 500), ("withdraw", 120), ("fee", 15),
            ("withdraw", 800), ("deposit", 260), ("withdraw", 90),
            ("fee", 15), ("deposit", 75), ("withdraw", 430)]
final_balance, bounced, trail = run_ledger(300, activity)
print("final " + str(final_balance))
print("bounced " + str(bounced))
print("trail " + ",".join(str(v) for v in trail))
print("low " + str(low_water_mark(trail)))
print("grow3 " + str(interest_projection(final_balance, 2, 3)))
print("grow12 " + str(interest_projection(final_balance, 2, 12)))
deposits = 0
for kind, amount in activity:
    if kind == "deposit":
        deposits = deposits + amount
print("inflow " + str(deposits))
outflow = 0
for kind, amount in activity:
    if kind != "deposit":
        outflow = outflow + amount
print("requested " + str(outflow))
swing = 0
for idx in range(1, len(trail)):
    move = trail[idx] - trail[idx - 1]
    if move < 0:
        move = -move
    if move > swing:
        swing = move
print("swing " + str(swing))
