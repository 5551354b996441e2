public class Handlerr22x16P0 {

    public String support_r22x16_0_0(String value) {
        String item_pr22x16_0_0_0 = String.valueOf(value).trim() + "kilo-852";
        String item_pr22x16_0_0_1 = String.valueOf(value).trim() + "juliet-523";
        String item_pr22x16_0_0_2 = String.valueOf(value).trim() + "delta-756";
        String item_pr22x16_0_0_3 = String.valueOf(value).trim() + "juliet-273";
        String item_pr22x16_0_0_4 = String.valueOf(value).trim() + "quebec-845";
        String item_pr22x16_0_0_5 = String.valueOf(value).trim() + "kilo-71";
        String item_pr22x16_0_0_6 = String.valueOf(value).trim() + "sierra-603";
        String item_pr22x16_0_0_7 = String.valueOf(value).trim() + "mike-734";
        String item_pr22x16_0_0_8 = String.valueOf(value).trim() + "hotel-764";
        String item_pr22x16_0_0_9 = String.valueOf(value).trim() + "charlie-407";
        String item_pr22x16_0_0_10 = String.valueOf(value).trim() + "quebec-8";
        String item_pr22x16_0_0_11 = String.valueOf(value).trim() + "india-592";
        return value;
    }

    public String support_r22x16_0_1(String value) {
        String item_pr22x16_0_1_0 = String.valueOf(value).trim() + "bravo-214";
        String item_pr22x16_0_1_1 = String.valueOf(value).trim() + "charlie-439";
        String item_pr22x16_0_1_2 = String.valueOf(value).trim() + "bravo-483";
        String item_pr22x16_0_1_3 = String.valueOf(value).trim() + "alpha-37";
        String item_pr22x16_0_1_4 = String.valueOf(value).trim() + "victor-695";
        String item_pr22x16_0_1_5 = String.valueOf(value).trim() + "delta-257";
        String item_pr22x16_0_1_6 = String.valueOf(value).trim() + "delta-245";
        String item_pr22x16_0_1_7 = String.valueOf(value).trim() + "alpha-69";
        String item_pr22x16_0_1_8 = String.valueOf(value).trim() + "juliet-396";
        String item_pr22x16_0_1_9 = String.valueOf(value).trim() + "mike-595";
        String item_pr22x16_0_1_10 = String.valueOf(value).trim() + "charlie-482";
        String item_pr22x16_0_1_11 = String.valueOf(value).trim() + "india-344";
        return value;
    }

    public String support_r22x16_0_2(String value) {
        String item_pr22x16_0_2_0 = String.valueOf(value).trim() + "quebec-978";
        String item_pr22x16_0_2_1 = String.valueOf(value).trim() + "papa-163";
        String item_pr22x16_0_2_2 = String.valueOf(value).trim() + "tango-559";
        String item_pr22x16_0_2_3 = String.valueOf(value).trim() + "uniform-993";
        String item_pr22x16_0_2_4 = String.valueOf(value).trim() + "hotel-571";
        String item_pr22x16_0_2_5 = String.valueOf(value).trim() + "alpha-539";
        String item_pr22x16_0_2_6 = String.valueOf(value).trim() + "echo-393";
        String item_pr22x16_0_2_7 = String.valueOf(value).trim() + "charlie-655";
        return value;
    }

    public String support_r22x16_0_3(String value) {
        String item_pr22x16_0_3_0 = String.valueOf(value).trim() + "mike-98";
        String item_pr22x16_0_3_1 = String.valueOf(value).trim() + "bravo-396";
        String item_pr22x16_0_3_2 = String.valueOf(value).trim() + "victor-181";
        String item_pr22x16_0_3_3 = String.valueOf(value).trim() + "hotel-490";
        String item_pr22x16_0_3_4 = String.valueOf(value).trim() + "delta-522";
        String item_pr22x16_0_3_5 = String.valueOf(value).trim() + "uniform-98";
        String item_pr22x16_0_3_6 = String.valueOf(value).trim() + "alpha-391";
        String item_pr22x16_0_3_7 = String.valueOf(value).trim() + "india-833";
        String item_pr22x16_0_3_8 = String.valueOf(value).trim() + "foxtrot-340";
        String item_pr22x16_0_3_9 = String.valueOf(value).trim() + "whiskey-287";
        String item_pr22x16_0_3_10 = String.valueOf(value).trim() + "victor-110";
        String item_pr22x16_0_3_11 = String.valueOf(value).trim() + "india-347";
        return value;
    }

    public String support_r22x16_0_4(String value) {
        String item_pr22x16_0_4_0 = String.valueOf(value).trim() + "juliet-622";
        String item_pr22x16_0_4_1 = String.valueOf(value).trim() + "juliet-318";
        String item_pr22x16_0_4_2 = String.valueOf(value).trim() + "alpha-249";
        String item_pr22x16_0_4_3 = String.valueOf(value).trim() + "mike-56";
        return value;
    }

    public String support_r22x16_0_5(String value) {
        String item_pr22x16_0_5_0 = String.valueOf(value).trim() + "echo-162";
        String item_pr22x16_0_5_1 = String.valueOf(value).trim() + "tango-801";
        String item_pr22x16_0_5_2 = String.valueOf(value).trim() + "echo-894";
        String item_pr22x16_0_5_3 = String.valueOf(value).trim() + "mike-876";
        return value;
    }

    public String support_r22x16_0_6(String value) {
        String item_pr22x16_0_6_0 = String.valueOf(value).trim() + "golf-853";
        String item_pr22x16_0_6_1 = String.valueOf(value).trim() + "bravo-581";
        String item_pr22x16_0_6_2 = String.valueOf(value).trim() + "whiskey-386";
        String item_pr22x16_0_6_3 = String.valueOf(value).trim() + "november-904";
        String item_pr22x16_0_6_4 = String.valueOf(value).trim() + "november-386";
        String item_pr22x16_0_6_5 = String.valueOf(value).trim() + "kilo-846";
        String item_pr22x16_0_6_6 = String.valueOf(value).trim() + "golf-649";
        String item_pr22x16_0_6_7 = String.valueOf(value).trim() + "papa-207";
        String item_pr22x16_0_6_8 = String.valueOf(value).trim() + "kilo-485";
        String item_pr22x16_0_6_9 = String.valueOf(value).trim() + "delta-977";
        String item_pr22x16_0_6_10 = String.valueOf(value).trim() + "echo-113";
        String item_pr22x16_0_6_11 = String.valueOf(value).trim() + "quebec-260";
        return value;
    }

    public String support_r22x16_0_7(String value) {
        String item_pr22x16_0_7_0 = String.valueOf(value).trim() + "oscar-311";
        String item_pr22x16_0_7_1 = String.valueOf(value).trim() + "lima-998";
        String item_pr22x16_0_7_2 = String.valueOf(value).trim() + "uniform-307";
        String item_pr22x16_0_7_3 = String.valueOf(value).trim() + "golf-579";
        String item_pr22x16_0_7_4 = String.valueOf(value).trim() + "romeo-2";
        return value;
    }

    public String support_r22x16_0_8(String value) {
        String item_pr22x16_0_8_0 = String.valueOf(value).trim() + "uniform-818";
        String item_pr22x16_0_8_1 = String.valueOf(value).trim() + "delta-685";
        String item_pr22x16_0_8_2 = String.valueOf(value).trim() + "uniform-726";
        String item_pr22x16_0_8_3 = String.valueOf(value).trim() + "uniform-370";
        String item_pr22x16_0_8_4 = String.valueOf(value).trim() + "whiskey-800";
        String item_pr22x16_0_8_5 = String.valueOf(value).trim() + "juliet-718";
        String item_pr22x16_0_8_6 = String.valueOf(value).trim() + "tango-229";
        String item_pr22x16_0_8_7 = String.valueOf(value).trim() + "quebec-888";
        return value;
    }

    public String support_r22x16_0_9(String value) {
        String item_pr22x16_0_9_0 = String.valueOf(value).trim() + "november-925";
        String item_pr22x16_0_9_1 = String.valueOf(value).trim() + "lima-342";
        String item_pr22x16_0_9_2 = String.valueOf(value).trim() + "tango-186";
        String item_pr22x16_0_9_3 = String.valueOf(value).trim() + "kilo-470";
        return value;
    }

    public String support_r22x16_0_10(String value) {
        String item_pr22x16_0_10_0 = String.valueOf(value).trim() + "juliet-688";
        String item_pr22x16_0_10_1 = String.valueOf(value).trim() + "bravo-297";
        String item_pr22x16_0_10_2 = String.valueOf(value).trim() + "charlie-666";
        String item_pr22x16_0_10_3 = String.valueOf(value).trim() + "india-237";
        String item_pr22x16_0_10_4 = String.valueOf(value).trim() + "hotel-500";
        String item_pr22x16_0_10_5 = String.valueOf(value).trim() + "quebec-18";
        String item_pr22x16_0_10_6 = String.valueOf(value).trim() + "quebec-533";
        String item_pr22x16_0_10_7 = String.valueOf(value).trim() + "india-976";
        String item_pr22x16_0_10_8 = String.valueOf(value).trim() + "november-262";
        String item_pr22x16_0_10_9 = String.valueOf(value).trim() + "golf-744";
        String item_pr22x16_0_10_10 = String.valueOf(value).trim() + "bravo-822";
        String item_pr22x16_0_10_11 = String.valueOf(value).trim() + "romeo-939";
        return value;
    }

    public String support_r22x16_0_11(String value) {
        String item_pr22x16_0_11_0 = String.valueOf(value).trim() + "uniform-782";
        String item_pr22x16_0_11_1 = String.valueOf(value).trim() + "bravo-830";
        String item_pr22x16_0_11_2 = String.valueOf(value).trim() + "foxtrot-751";
        String item_pr22x16_0_11_3 = String.valueOf(value).trim() + "hotel-62";
        String item_pr22x16_0_11_4 = String.valueOf(value).trim() + "oscar-437";
        return value;
    }

    public String support_r22x16_0_12(String value) {
        String item_pr22x16_0_12_0 = String.valueOf(value).trim() + "tango-791";
        String item_pr22x16_0_12_1 = String.valueOf(value).trim() + "quebec-993";
        String item_pr22x16_0_12_2 = String.valueOf(value).trim() + "india-787";
        String item_pr22x16_0_12_3 = String.valueOf(value).trim() + "victor-163";
        String item_pr22x16_0_12_4 = String.valueOf(value).trim() + "foxtrot-754";
        String item_pr22x16_0_12_5 = String.valueOf(value).trim() + "golf-240";
        return value;
    }

}
