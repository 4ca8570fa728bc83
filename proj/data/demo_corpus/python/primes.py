def sieve(limit):
    flags = [True] * (limit + 1)
    flags[0] = False
    flags[1] = False
    step = 2
    while step * step <= limit:
        if flags[step]:
            multiple = step * step
            while multiple <= limit:
                flags[multiple] = False
                multiple = multiple + step
        step = step + 1
    primes = []
    for number in range(2, limit + 1):
        if flags[number]:
            primes.append(number)
    return primes


def twin_pairs(primes):
    pairs = []
    for idx in range(len(primes) - 1):
        if primes[idx + 1] - primes[idx] == 2:
            pairs.append((primes[idx], primes[idx + 1]))
    return pairs


def digit_sum(number):
    total = 0
    while number > 0:
        total = total + number % 10
        number = number // 10
    return total


def classify(primes):
    # buckets keyed by digit sum parity
    even_bucket = 0
    odd_bucket = 0
    for prime in primes:
        if digit_sum(prime) % 2 == 0:
            even_bucket = even_bucket + 1
        else:
            odd_bucket = odd_bucket + 1
    return even_bucket, odd_bucket


found = sieve(200)
print("count " + str(len(found)))
print("last " + str(found[-1]))
twins = twin_pairs(found)
print("twins " + str(len(twins)))
first_twins = []
for pair in twins[:4]:
    first_twins.append(str(pair[0]) + "+" + str(pair[1]))
print("lead " + ";".join(first_twins))
evens, odds = classify(found)
print("digit " + str(evens) + "/" + str(odds))
print("sum " + str(sum(found)))
