public class SortingSuite {
    static int[] generate(int length, int seed) {
        int[] data = new int[length];
        int state = seed;
        for (int i = 0; i < length; i++) {
            state = (state * 131 + 7) % 251;
            data[i] = state;
        }
        return data;
    }

    static int[] insertionSort(int[] values) {
        int[] data = values.clone();
        for (int i = 1; i < data.length; i++) {
            int current = data[i];
            int j = i - 1;
            while (j >= 0 && data[j] > current) {
                data[j + 1] = data[j];
                j = j - 1;
            }
            data[j + 1] = current;
        }
        return data;
    }

    static int[] selectionSort(int[] values) {
        int[] data = values.clone();
        for (int i = 0; i < data.length - 1; i++) {
            int smallest = i;
            for (int j = i + 1; j < data.length; j++) {
                if (data[j] < data[smallest]) {
                    smallest = j;
                }
            }
            int held = data[i];
            data[i] = data[smallest];
            data[smallest] = held;
        }
        return data;
    }

    // counts pairs that appear out of order
    static int inversions(int[] values) {
        int count = 0;
        for (int i = 0; i < values.length; i++) {
            for (int j = i + 1; j < values.length; j++) {
                if (values[i] > values[j]) {
                    count = count + 1;
                }
            }
        }
        return count;
    }

    static String render(int[] values) {
        StringBuilder text = new StringBuilder();
        for (int i = 0; i < values.length; i++) {
            if (i > 0) {
                text.append(",");
            }
            text.append(values[i]);
        }
        return text.toString();
    }

    public static void main(String[] args) {
        int[] sample = generate(18, 3);
        System.out.println("raw " + render(sample));
        System.out.println("ins " + render(insertionSort(sample)));
        System.out.println("sel " + render(selectionSort(sample)));
        System.out.println("inv " + inversions(sample));
        boolean agree = render(insertionSort(sample)).equals(render(selectionSort(sample)));
        System.out.println("agree " + agree);
    }
}
