public class GradeBook {
    static int[] buildScores(int count, int seed) {
        int[] scores = new int[count];
        int state = seed;
        for (int i = 0; i < count; i++) {
            state = (state * 31 + 17) % 101;
            scores[i] = state;
        }
        return scores;
    }

    static int sumAbove(int[] scores, int threshold) {
        int total = 0;
        for (int i = 0; i < scores.length; i++) {
            if (scores[i] > threshold) {
                total = total + scores[i];
            }
        }
        return total;
    }

    static int highest(int[] scores) {
        int best = scores[0];
        for (int i = 1; i < scores.length; i++) {
            if (scores[i] > best) {
                best = scores[i];
            }
        }
        return best;
    }

    // integer average rounded toward zero
    static int averageOf(int[] scores) {
        int total = 0;
        for (int i = 0; i < scores.length; i++) {
            total = total + scores[i];
        }
        return total / scores.length;
    }

    static String histogram(int[] scores) {
        int[] buckets = new int[4];
        for (int i = 0; i < scores.length; i++) {
            int slot = scores[i] / 26;
            if (slot > 3) {
                slot = 3;
            }
            buckets[slot] = buckets[slot] + 1;
        }
        StringBuilder text = new StringBuilder();
        for (int b = 0; b < buckets.length; b++) {
            if (b > 0) {
                text.append(",");
            }
            text.append(buckets[b]);
        }
        return text.toString();
    }

    public static void main(String[] args) {
        int[] marks = buildScores(14, 5);
        StringBuilder raw = new StringBuilder();
        for (int i = 0; i < marks.length; i++) {
            if (i > 0) {
                raw.append(",");
            }
            raw.append(marks[i]);
        }
        System.out.println("raw " + raw.toString());
        System.out.println("above " + sumAbove(marks, 50));
        System.out.println("best " + highest(marks));
        System.out.println("avg " + averageOf(marks));
        System.out.println("hist " + histogram(marks));
    }
}
