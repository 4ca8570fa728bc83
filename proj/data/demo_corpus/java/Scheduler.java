public class Scheduler {
    static int[] order(int[] starts, int[] finishes) {
        int count = starts.length;
        int[] indices = new int[count];
        for (int i = 0; i < count; i++) {
            indices[i] = i;
        }
        for (int i = 1; i < count; i++) {
            int current = indices[i];
            int j = i - 1;
            while (j >= 0 && finishes[indices[j]] > finishes[current]) {
                indices[j + 1] = indices[j];
                j = j - 1;
            }
            indices[j + 1] = current;
        }
        return indices;
    }

    static boolean[] selectCompatible(int[] starts, int[] finishes) {
        int[] ranked = order(starts, finishes);
        boolean[] chosen = new boolean[starts.length];
        int cursor = 0;
        for (int k = 0; k < ranked.length; k++) {
            int job = ranked[k];
            if (starts[job] >= cursor) {
                chosen[job] = true;
                cursor = finishes[job];
            }
        }
        return chosen;
    }

    // summed running time of the selected jobs
    static int busyTime(int[] starts, int[] finishes, boolean[] chosen) {
        int busy = 0;
        for (int i = 0; i < starts.length; i++) {
            if (chosen[i]) {
                busy = busy + (finishes[i] - starts[i]);
            }
        }
        return busy;
    }

    static int conflicts(int[] starts, int[] finishes) {
        int count = 0;
        for (int i = 0; i < starts.length; i++) {
            for (int j = i + 1; j < starts.length; j++) {
                if (starts[i] < finishes[j] && starts[j] < finishes[i]) {
                    count = count + 1;
                }
            }
        }
        return count;
    }

    public static void main(String[] args) {
        String[] names = {"prep", "scan", "audit", "merge", "build",
                          "bench", "pack", "ship", "sync", "probe"};
        int[] starts = {1, 3, 0, 5, 3, 5, 6, 8, 8, 2};
        int[] finishes = {4, 5, 6, 7, 9, 9, 10, 11, 12, 14};
        boolean[] chosen = selectCompatible(starts, finishes);
        StringBuilder text = new StringBuilder();
        int count = 0;
        for (int i = 0; i < names.length; i++) {
            if (chosen[i]) {
                if (text.length() > 0) {
                    text.append(",");
                }
                text.append(names[i]);
                count = count + 1;
            }
        }
        System.out.println("chosen " + text.toString());
        System.out.println("count " + count);
        System.out.println("busy " + busyTime(starts, finishes, chosen));
        System.out.println("conflicts " + conflicts(starts, finishes));
        int horizon = 0;
        for (int i = 0; i < finishes.length; i++) {
            if (finishes[i] > horizon) {
                horizon = finishes[i];
            }
        }
        System.out.println("horizon " + horizon);
    }
}
