package press;

public class Printer {
    public Printer() {
    }

    public void print(String text) {
    }

    public void print(int value) {
    }

    public void print(String text, int value) {
    }
}
