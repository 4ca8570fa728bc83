public class RomanNumerals {
    static String toRoman(int number) {
        int[] steps = {1000, 900, 500, 400, 100, 90, 50, 40, 10, 9, 5, 4, 1};
        String[] tokens = {"M", "CM", "D", "CD", "C", "XC", "L",
                           "XL", "X", "IX", "V", "IV", "I"};
        StringBuilder text = new StringBuilder();
        int remaining = number;
        for (int i = 0; i < steps.length; i++) {
            while (remaining >= steps[i]) {
                text.append(tokens[i]);
                remaining = remaining - steps[i];
            }
        }
        return text.toString();
    }

    static int letterValue(char letter) {
        if (letter == 'I') { return 1; }
        if (letter == 'V') { return 5; }
        if (letter == 'X') { return 10; }
        if (letter == 'L') { return 50; }
        if (letter == 'C') { return 100; }
        if (letter == 'D') { return 500; }
        return 1000;
    }

    static int fromRoman(String text) {
        int total = 0;
        int idx = 0;
        while (idx < text.length()) {
            int current = letterValue(text.charAt(idx));
            if (idx + 1 < text.length() && letterValue(text.charAt(idx + 1)) > current) {
                total = total + letterValue(text.charAt(idx + 1)) - current;
                idx = idx + 2;
            } else {
                total = total + current;
                idx = idx + 1;
            }
        }
        return total;
    }

    // round-trip defects over an integer range
    static int roundtripErrors(int limit) {
        int broken = 0;
        for (int number = 1; number <= limit; number++) {
            if (fromRoman(toRoman(number)) != number) {
                broken = broken + 1;
            }
        }
        return broken;
    }

    public static void main(String[] args) {
        int[] samples = {9, 14, 40, 90, 444, 1987, 2024, 3999};
        for (int i = 0; i < samples.length; i++) {
            System.out.println(samples[i] + " " + toRoman(samples[i]));
        }
        String[] texts = {"XLII", "MCMXC", "CDXLIV", "MMXXV"};
        for (int i = 0; i < texts.length; i++) {
            System.out.println(texts[i] + " " + fromRoman(texts[i]));
        }
        System.out.println("errors " + roundtripErrors(500));
        int longest = 0;
        for (int number = 1; number < 500; number++) {
            int length = toRoman(number).length();
            if (length > longest) {
                longest = length;
            }
        }
        System.out.println("longest " + longest);
    }
}
