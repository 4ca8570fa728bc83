public class StatsCalc {
    static double meanOf(int[] values) {
        double total = 0.0;
        for (int i = 0; i < values.length; i++) {
            total = total + values[i];
        }
        return total / values.length;
    }

    static double medianOf(int[] values) {
        int[] ordered = values.clone();
        for (int i = 1; i < ordered.length; i++) {
            int current = ordered[i];
            int j = i - 1;
            while (j >= 0 && ordered[j] > current) {
                ordered[j + 1] = ordered[j];
                j = j - 1;
            }
            ordered[j + 1] = current;
        }
        int mid = ordered.length / 2;
        if (ordered.length % 2 == 1) {
            return ordered[mid];
        }
        return (ordered[mid - 1] + ordered[mid]) / 2.0;
    }

    // population variance, not the sample estimator
    static double varianceOf(int[] values) {
        double center = meanOf(values);
        double accum = 0.0;
        for (int i = 0; i < values.length; i++) {
            double spread = values[i] - center;
            accum = accum + spread * spread;
        }
        return accum / values.length;
    }

    static int countAbove(int[] values, double limit) {
        int count = 0;
        for (int i = 0; i < values.length; i++) {
            if (values[i] > limit) {
                count = count + 1;
            }
        }
        return count;
    }

    static int rangeOf(int[] values) {
        int lowest = values[0];
        int highest = values[0];
        for (int i = 1; i < values.length; i++) {
            if (values[i] < lowest) {
                lowest = values[i];
            }
            if (values[i] > highest) {
                highest = values[i];
            }
        }
        return highest - lowest;
    }

    public static void main(String[] args) {
        int[] readings = {12, 55, 31, 8, 42, 77, 23, 19, 64, 90, 37, 41, 5, 28, 70, 33};
        System.out.printf("mean %.3f%n", meanOf(readings));
        System.out.printf("median %.1f%n", medianOf(readings));
        System.out.printf("var %.3f%n", varianceOf(readings));
        System.out.println("above " + countAbove(readings, meanOf(readings)));
        System.out.println("span " + rangeOf(readings));
        int[] halves = new int[2];
        for (int i = 0; i < readings.length; i++) {
            if (i < readings.length / 2) {
                halves[0] = halves[0] + readings[i];
            } else {
                halves[1] = halves[1] + readings[i];
            }
        }
        System.out.println("halves " + halves[0] + "/" + halves[1]);
    }
}
