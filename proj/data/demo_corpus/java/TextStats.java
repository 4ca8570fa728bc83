public class TextStats {
    static String[] tokenize(String text) {
        String lowered = text.toLowerCase();
        String[] scratch = new String[text.length()];
        int used = 0;
        StringBuilder current = new StringBuilder();
        for (int i = 0; i < lowered.length(); i++) {
            char ch = lowered.charAt(i);
            if (ch >= 'a' && ch <= 'z') {
                current.append(ch);
            } else if (current.length() > 0) {
                scratch[used] = current.toString();
                used = used + 1;
                current = new StringBuilder();
            }
        }
        if (current.length() > 0) {
            scratch[used] = current.toString();
            used = used + 1;
        }
        String[] words = new String[used];
        for (int i = 0; i < used; i++) {
            words[i] = scratch[i];
        }
        return words;
    }

    // counts words equal to the probe
    static int occurrences(String[] words, String probe) {
        int count = 0;
        for (int i = 0; i < words.length; i++) {
            if (words[i].equals(probe)) {
                count = count + 1;
            }
        }
        return count;
    }

    static int vowelCount(String[] words) {
        int vowels = 0;
        for (int i = 0; i < words.length; i++) {
            for (int j = 0; j < words[i].length(); j++) {
                char ch = words[i].charAt(j);
                if (ch == 'a' || ch == 'e' || ch == 'i' || ch == 'o' || ch == 'u') {
                    vowels = vowels + 1;
                }
            }
        }
        return vowels;
    }

    static String lengthProfile(String[] words) {
        int[] tally = new int[16];
        for (int i = 0; i < words.length; i++) {
            int size = words[i].length();
            if (size < 16) {
                tally[size] = tally[size] + 1;
            }
        }
        StringBuilder profile = new StringBuilder();
        for (int size = 1; size < 16; size++) {
            if (tally[size] > 0) {
                if (profile.length() > 0) {
                    profile.append(",");
                }
                profile.append(size + "x" + tally[size]);
            }
        }
        return profile.toString();
    }

    public static void main(String[] args) {
        String passage = "the quick brown fox jumps over the lazy dog while the "
                + "eager dog barks at the quick fox and the fox slips away "
                + "into the quiet brown woods where the dog cannot follow";
        String[] words = tokenize(passage);
        System.out.println("words " + words.length);
        System.out.println("the " + occurrences(words, "the"));
        System.out.println("fox " + occurrences(words, "fox"));
        System.out.println("dog " + occurrences(words, "dog"));
        System.out.println("vowels " + vowelCount(words));
        System.out.println("profile " + lengthProfile(words));
    }
}
