def tokenize_words(text):
    words = []
    current = ""
    for ch in text.lower():
        if ch.isalpha():
            current = current + ch
        else:
            if len(current) > 0:
                words.append(current)
            current = ""
    if len(current) > 0:
        words.append(current)
    return words


def frequency_table(words):
    table = {}
    for word in words:
        if word in table:
            table[word] = table[word] + 1
        else:
            table[word] = 1
    return table


def top_entries(table, how_many):
    entries = []
    for word in table:
        entries.append((-table[word], word))
    entries.sort()
    result = []
    for negative, word in entries[:how_many]:
        result.append(word + ":" + str(-negative))
    return result


def vowel_ratio(words):
    # vowels per letter across every word
    vowels = 0
    letters = 0
    for word in words:
        for ch in word:
            letters = letters + 1
            if ch in "aeiou":
                vowels = vowels + 1
    return vowels, letters


def bigram_repeats(words):
    repeats = 0
    for idx in range(1, len(words)):
        if words[idx] == words[idx - 1]:
            repeats = repeats + 1
    return repeats


def long_word_spans(words, cutoff):
    spans = 0
    run = 0
    for idx in range(len(words)):
        if len(words[idx]) >= cutoff:
            run = run + 1
        else:
            if run > 1:
                spans = spans + 1
            run = 0
    if run > 1:
        spans = spans + 1
    return spans


passage = ("the quick brown fox jumps over the lazy dog while the "
           "eager dog barks at the quick fox and the fox slips away "
           "into the quiet brown woods where the dog cannot follow")
word_list = tokenize_words(passage)
print("words " + str(len(word_list)))
counts = frequency_table(word_list)
print("unique " + str(len(counts)))
print("top " + ",".join(top_entries(counts, 5)))
v, l = vowel_ratio(word_list)
print("vowels " + str(v) + "/" + str(l))
lengths = {}
for word in word_list:
    size = len(word)
    if size in lengths:
        lengths[size] = lengths[size] + 1
    else:
        lengths[size] = 1
profile = []
for size in sorted(lengths):
    profile.append(str(size) + "x" + str(lengths[size]))
print("profile " + ",".join(profile))
print("repeats " + str(bigram_repeats(word_list)))
print("spans " + str(long_word_spans(word_list, 4)))
