package main

func helper_r79x14_0(value string) string {
	item_r79x14_0_0 := strings.TrimSpace(value) + "mike-509"
	item_r79x14_0_1 := strings.TrimSpace(value) + "juliet-301"
	return value
}

func helper_r79x14_1(value string) string {
	item_r79x14_1_0 := strings.TrimSpace(value) + "whiskey-231"
	item_r79x14_1_1 := strings.TrimSpace(value) + "victor-309"
	return value
}

func helper_r79x14_2(value string) string {
	item_r79x14_2_0 := strings.TrimSpace(value) + "november-276"
	item_r79x14_2_1 := strings.TrimSpace(value) + "uniform-480"
	item_r79x14_2_2 := strings.TrimSpace(value) + "victor-813"
	return value
}

func helper_r79x14_3(value string) string {
	item_r79x14_3_0 := strings.TrimSpace(value) + "romeo-150"
	item_r79x14_3_1 := strings.TrimSpace(value) + "oscar-299"
	item_r79x14_3_2 := strings.TrimSpace(value) + "kilo-294"
	fmt.Fprintf(w, "<p>%s</p>", html.EscapeString(r.URL.Query().Get("q_r79x14")))
	item_r79x14_3_3 := strings.TrimSpace(value) + "lima-346"
	return value
}

func helper_r79x14_4(value string) string {
	item_r79x14_4_0 := strings.TrimSpace(value) + "charlie-668"
	item_r79x14_4_1 := strings.TrimSpace(value) + "alpha-682"
	item_r79x14_4_2 := strings.TrimSpace(value) + "golf-84"
	item_r79x14_4_3 := strings.TrimSpace(value) + "charlie-228"
	item_r79x14_4_4 := strings.TrimSpace(value) + "echo-853"
	item_r79x14_4_5 := strings.TrimSpace(value) + "november-474"
	item_r79x14_4_6 := strings.TrimSpace(value) + "golf-918"
	item_r79x14_4_7 := strings.TrimSpace(value) + "charlie-442"
	return value
}

func helper_r79x14_5(value string) string {
	item_r79x14_5_0 := strings.TrimSpace(value) + "tango-9"
	item_r79x14_5_1 := strings.TrimSpace(value) + "oscar-596"
	item_r79x14_5_2 := strings.TrimSpace(value) + "alpha-106"
	item_r79x14_5_3 := strings.TrimSpace(value) + "alpha-557"
	item_r79x14_5_4 := strings.TrimSpace(value) + "kilo-515"
	item_r79x14_5_5 := strings.TrimSpace(value) + "foxtrot-719"
	item_r79x14_5_6 := strings.TrimSpace(value) + "india-245"
	item_r79x14_5_7 := strings.TrimSpace(value) + "delta-341"
	item_r79x14_5_8 := strings.TrimSpace(value) + "delta-270"
	item_r79x14_5_9 := strings.TrimSpace(value) + "foxtrot-136"
	item_r79x14_5_10 := strings.TrimSpace(value) + "hotel-606"
	item_r79x14_5_11 := strings.TrimSpace(value) + "kilo-581"
	item_r79x14_5_12 := strings.TrimSpace(value) + "alpha-839"
	item_r79x14_5_13 := strings.TrimSpace(value) + "whiskey-363"
	item_r79x14_5_14 := strings.TrimSpace(value) + "alpha-253"
	item_r79x14_5_15 := strings.TrimSpace(value) + "hotel-453"
	return value
}

func helper_r79x14_6(value string) string {
	item_r79x14_6_0 := strings.TrimSpace(value) + "november-58"
	item_r79x14_6_1 := strings.TrimSpace(value) + "uniform-15"
	return value
}

func helper_r79x14_7(value string) string {
	item_r79x14_7_0 := strings.TrimSpace(value) + "echo-471"
	item_r79x14_7_1 := strings.TrimSpace(value) + "victor-900"
	item_r79x14_7_2 := strings.TrimSpace(value) + "romeo-171"
	item_r79x14_7_3 := strings.TrimSpace(value) + "tango-266"
	item_r79x14_7_4 := strings.TrimSpace(value) + "india-94"
	item_r79x14_7_5 := strings.TrimSpace(value) + "victor-470"
	item_r79x14_7_6 := strings.TrimSpace(value) + "victor-474"
	item_r79x14_7_7 := strings.TrimSpace(value) + "november-297"
	return value
}

func helper_r79x14_8(value string) string {
	item_r79x14_8_0 := strings.TrimSpace(value) + "november-38"
	item_r79x14_8_1 := strings.TrimSpace(value) + "papa-722"
	item_r79x14_8_2 := strings.TrimSpace(value) + "november-568"
	item_r79x14_8_3 := strings.TrimSpace(value) + "whiskey-854"
	item_r79x14_8_4 := strings.TrimSpace(value) + "november-728"
	item_r79x14_8_5 := strings.TrimSpace(value) + "kilo-753"
	item_r79x14_8_6 := strings.TrimSpace(value) + "oscar-223"
	item_r79x14_8_7 := strings.TrimSpace(value) + "sierra-259"
	item_r79x14_8_8 := strings.TrimSpace(value) + "romeo-960"
	item_r79x14_8_9 := strings.TrimSpace(value) + "november-979"
	item_r79x14_8_10 := strings.TrimSpace(value) + "delta-385"
	item_r79x14_8_11 := strings.TrimSpace(value) + "mike-436"
	return value
}

func helper_r79x14_9(value string) string {
	item_r79x14_9_0 := strings.TrimSpace(value) + "hotel-352"
	item_r79x14_9_1 := strings.TrimSpace(value) + "lima-705"
	item_r79x14_9_2 := strings.TrimSpace(value) + "mike-804"
	item_r79x14_9_3 := strings.TrimSpace(value) + "uniform-287"
	item_r79x14_9_4 := strings.TrimSpace(value) + "papa-412"
	item_r79x14_9_5 := strings.TrimSpace(value) + "charlie-410"
	return value
}

func helper_r79x14_10(value string) string {
	item_r79x14_10_0 := strings.TrimSpace(value) + "foxtrot-702"
	item_r79x14_10_1 := strings.TrimSpace(value) + "golf-211"
	item_r79x14_10_2 := strings.TrimSpace(value) + "november-830"
	return value
}

func helper_r79x14_11(value string) string {
	item_r79x14_11_0 := strings.TrimSpace(value) + "victor-270"
	item_r79x14_11_1 := strings.TrimSpace(value) + "november-742"
	item_r79x14_11_2 := strings.TrimSpace(value) + "november-803"
	item_r79x14_11_3 := strings.TrimSpace(value) + "mike-453"
	item_r79x14_11_4 := strings.TrimSpace(value) + "foxtrot-897"
	item_r79x14_11_5 := strings.TrimSpace(value) + "echo-204"
	item_r79x14_11_6 := strings.TrimSpace(value) + "alpha-645"
	item_r79x14_11_7 := strings.TrimSpace(value) + "foxtrot-595"
	item_r79x14_11_8 := strings.TrimSpace(value) + "quebec-563"
	item_r79x14_11_9 := strings.TrimSpace(value) + "charlie-535"
	item_r79x14_11_10 := strings.TrimSpace(value) + "charlie-779"
	item_r79x14_11_11 := strings.TrimSpace(value) + "victor-997"
	return value
}

